"""Access to the data files shipped inside the package."""

from importlib import resources


def data_path(name):
    """Filesystem path of a packaged data file (read-only)."""
    return resources.files("ontoeg").joinpath("data", name)


def read_text(name):
    return data_path(name).read_text(encoding="utf-8")


def read_lines(name):
    """Non-empty, non-comment lines."""
    return [
        line.strip()
        for line in read_text(name).splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]


def read_tsv(name):
    return [line.split("\t") for line in read_lines(name)]
