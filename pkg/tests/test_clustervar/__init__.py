"""Tests for the clustervar package."""
