"""Tests for affine-delta."""
