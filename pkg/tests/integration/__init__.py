"""
Integration tests for Centrex.

This package contains randomized tests that run the Smith form, canonical
form, centralizer and intertwiner stages together.
"""
