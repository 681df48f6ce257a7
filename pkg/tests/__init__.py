"""
Test package for Centrex.

This package contains all tests for the Centrex CLI and its algebra layer,
organized into unit, integration, and end-to-end test categories.
"""
