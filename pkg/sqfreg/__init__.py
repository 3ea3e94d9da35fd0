# ANCHOR: __init__ (paste whole file)
__all__ = [
    "config",
    "errors",
    "graph",
    "graph6",
    "cameron_walker",
    "ideal",
    "gf",
    "regularity",
    "even_connection",
    "order",
    "report",
    "verify",
    "reg_cache",
    "io_logs",
    "cli",
]
