"""Tests for the clustervar application."""
