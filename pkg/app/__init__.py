"""
Kummer Hasse-Witt Toolkit

Hasse-Witt matrices, a-numbers and p-ranks of Kummer covers y^n = f(x)
and of characteristic-2 hyperelliptic curves over finite fields.
"""

__version__ = "0.1.0"
