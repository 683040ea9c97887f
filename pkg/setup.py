from setuptools import setup, find_packages

setup(
	name='visikit',
	version='0.1',
	description='Compute semi-bar k-visibility graphs and convert them to and from quasiplanar convex geometric drawings',
	author='Joshua R (Botmasher)',
	packages=find_packages(include=['visikit', 'visikit.*']),
	install_requires=['networkx>=2.6'],
	entry_points={
		'console_scripts': ['visikit=visikit.cli.cli:main']
	}
)
