"""Tests for interface adapters."""
