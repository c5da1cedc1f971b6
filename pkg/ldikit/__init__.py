# ldikit/__init__.py
"""
Local-dimension-invariant stabilizer codes: conversion, distance oracles and
cutoff bounds.
"""
__version__ = "0.1.0"
