"""Application layer for clustervar."""
