"""Heterogeneous graphlet orbits: canonical forms, catalogs and counts."""
