"""Tests for polylink."""
