"""Allow ``python -m clustervar``."""

from clustervar.infrastructure.cli.main import main

if __name__ == "__main__":
    raise SystemExit(main())
