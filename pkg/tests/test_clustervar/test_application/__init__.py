"""Tests for the application layer."""
