# helpers for unordered index pairs stored as sorted tuples

def normalize_pair(pair):
    """Turn an unordered pair into an (low, high) tuple"""
    a, b = pair
    return (a, b) if a <= b else (b, a)

def normalize_pairs(pairs):
    """Normalize every pair and sort the result, keeping duplicates"""
    return tuple(sorted(normalize_pair(pair) for pair in pairs))

def pair_text(pair):
    """Format a pair the way violation messages name it"""
    a, b = pair
    return f"{{{a}, {b}}}"

def all_pairs(n):
    """Read every unordered pair of indices 0..n-1 in lexicographic order"""
    return [(a, b) for a in range(n) for b in range(a + 1, n)]
