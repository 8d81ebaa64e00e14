"""Exact Jones evaluation on Morse diagrams."""
