"""Tests for pydiscretejordan."""
