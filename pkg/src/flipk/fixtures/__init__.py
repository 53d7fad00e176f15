"""Named K-data documents for the building blocks and a few mixtures."""

import json
from importlib import resources


def names():
    return sorted(p.name[:-5] for p in resources.files(__name__).iterdir()
                  if p.name.endswith(".json"))


def path(name):
    return resources.files(__name__) / f"{name}.json"


def load(name):
    """The fixture as (KData, display name)."""
    from ..cli import parse_document

    return parse_document(json.loads(path(name).read_text(encoding="utf-8")), name)
