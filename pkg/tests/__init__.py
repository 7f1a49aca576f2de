"""Tests for the Jacobson Lab package."""
