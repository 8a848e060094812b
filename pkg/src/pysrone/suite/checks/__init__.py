"""Theorem checks, one module per topic. Importing a module registers its checks in `pysrone.suite.base.CHECKS`."""
