"""Weyl tests."""
