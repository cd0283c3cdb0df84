"""Minimal primes of ideals of adjacent minors: constructors, combinatorics
and an exact Groebner toolbox to check them."""

__version__ = "0.1.0"
