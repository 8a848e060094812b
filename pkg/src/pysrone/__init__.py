"""pysrone decides, certifies and exhaustively verifies element-wise stable range one in finite rings and in
integer matrix rings."""

__version__ = "0.1.0"
