"""Interface adapters layer for clustervar."""
