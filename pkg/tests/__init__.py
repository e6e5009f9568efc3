"""
Tests for rook_orbits package.
"""
