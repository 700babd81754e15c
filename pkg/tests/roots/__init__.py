"""Roots tests."""
