# ldikit/utils/__init__.py
"""
Helpers for enumeration and code files.

Code-file helpers live in ldikit.utils.codefile; they depend on the catalog
service and are imported from there directly.
"""
from .enumeration import ScanJob, run_level, scan_support, site_tables, site_values

__all__ = ["ScanJob", "run_level", "scan_support", "site_tables", "site_values"]
