"""
Unit tests for Centrex modules.

This package contains unit tests that test individual functions and classes
in isolation, with configuration and I/O mocked.
"""
