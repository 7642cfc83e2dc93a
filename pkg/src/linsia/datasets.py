"""Loaders for the bundled fixture networks (see data/README.md for
provenance notes on each file)."""

from importlib import resources

from .graph import load_community_file, load_edge_list

__all__ = [
    "karate",
    "karate_factions",
    "dolphins",
    "football",
    "football_conferences",
    "lfr_sample",
    "lfr_sample_truth",
    "fixture_graphs",
]


def _data(name):
    return resources.files("linsia.data").joinpath(name)


def _load_graph(name, format="plain"):
    with _data(name).open("r", encoding="utf-8") as fh:
        return load_edge_list(fh, format=format)


def _load_cover(name, graph):
    with _data(name).open("r", encoding="utf-8") as fh:
        return load_community_file(fh, graph)


def karate():
    """Zachary's karate club: 34 members, 78 ties."""
    return _load_graph("karate.edges")


def karate_factions(graph=None):
    """The club's two-faction split after the fission."""
    return _load_cover("karate_factions.communities", graph or karate())


def dolphins():
    """The Doubtful Sound bottlenose dolphin association network (62 nodes)."""
    return _load_graph("dolphins.edges")


def football():
    """Division I-A college football season graph (115 teams)."""
    return _load_graph("football.edges")


def football_conferences(graph=None):
    """Conference membership of every team (12 conferences)."""
    return _load_cover("football_conferences.communities", graph or football())


def lfr_sample():
    """A small benchmark-format network pair shipped for format testing."""
    return _load_graph("lfr_sample/network.dat", format="lfr")


def lfr_sample_truth(graph=None):
    return _load_cover("lfr_sample/community.dat", graph or lfr_sample())


def fixture_graphs():
    """(name, graph) pairs for every bundled fixture network."""
    return [
        ("karate", karate()),
        ("dolphins", dolphins()),
        ("football", football()),
        ("lfr_sample", lfr_sample()),
    ]
