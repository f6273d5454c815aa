"""CLI command tests"""
