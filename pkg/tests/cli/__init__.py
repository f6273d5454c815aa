"""Tests for diamgraph's command line interface.

This package contains tests for:
- Command parsing and the exit-code contract
- Individual command implementations
- End-to-end runs through files
"""
