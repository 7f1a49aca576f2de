"""Unit tests for Jacobson Lab."""
