"""Clustervar - variance estimation for cluster-randomized experiments."""

__version__ = "0.1.0"
