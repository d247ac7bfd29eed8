"""Tests for domain entities."""
