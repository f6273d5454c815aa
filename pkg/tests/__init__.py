"""Test suite for the diamgraph project.

This package contains all tests for the diamgraph project, organized by module:
- cli/: Tests for command line interface functionality
- core/: Tests for geometry, diameter graphs, constructions and the double cover
- services/: Tests for verification suites, annealing search and sweeps
- utils/: Tests for serialization and file utilities
"""
