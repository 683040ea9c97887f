from .embed import embed
from .peel import Peeler, peel, flat_peel, flat_order, enumerate_peel_orders
from .curl import curl, curl_preserves, cut, cut_order
