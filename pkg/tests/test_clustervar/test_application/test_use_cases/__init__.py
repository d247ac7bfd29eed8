"""Tests for application use cases."""
