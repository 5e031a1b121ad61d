"""Tests that the public entry points of the package are documented."""

import inspect

import pytest

from dinfty_cluster import cli, cluster_check, hom_engine


class TestPublicDocstrings:
    """Test the docstrings of module-level public functions."""

    @pytest.mark.parametrize("module", [cli, cluster_check, hom_engine], ids=lambda module: module.__name__)
    def test_public_functions_are_documented(self, module):
        """Test that every public function defined in the module carries a docstring."""
        undocumented = [
            name
            for name, func in inspect.getmembers(module, inspect.isfunction)
            if not name.startswith("_") and func.__module__ == module.__name__ and not inspect.getdoc(func)
        ]
        assert undocumented == []
