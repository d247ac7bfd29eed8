"""Infrastructure layer for clustervar."""
