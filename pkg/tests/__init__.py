"""Tests for the pronorm package."""
