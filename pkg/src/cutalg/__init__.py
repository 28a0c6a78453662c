"""Cut ideals, cut algebras and cut polytopes of finite simple graphs."""

__version__ = "0.1.0"
