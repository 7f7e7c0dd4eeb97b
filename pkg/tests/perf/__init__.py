"""Performance tests package for typegraph."""
