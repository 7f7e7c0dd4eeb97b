"""typegraph - chromatic numbers of type-graphs of finite set pairs."""

from typegraph.exceptions import TypeGraphError
from typegraph.order_types import BlockDecomposition, OrderType, block_decompose, factorize, parse_type

__version__ = "0.1.0"

__all__ = [
    "BlockDecomposition",
    "OrderType",
    "TypeGraphError",
    "__version__",
    "block_decompose",
    "factorize",
    "parse_type",
]
