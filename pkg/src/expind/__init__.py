__all__ = [
    "characterize",
    "cli",
    "config",
    "dyadic",
    "errors",
    "families",
    "formats",
    "graph",
    "solver",
    "trees",
    "verify",
    "weights",
]
__version__ = "0.1.0"
