"""Finitely presented groups: abelianization, coset enumeration, Tietze moves and homomorphism search."""
