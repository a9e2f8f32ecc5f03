"""Tests for spectral-seed."""
