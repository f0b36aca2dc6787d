"""quif5 - signed standard bases over basic algebras"""

__version__ = "0.1.0"
