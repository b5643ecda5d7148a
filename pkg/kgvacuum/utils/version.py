"""Version string echoed into provenance headers.

The packaged version comes from pyproject.toml. Git installs also carry the
commit they were built from (direct_url.json), appended as +<short-sha> so
a provenance header pins the exact code that produced a file.
"""

import importlib.metadata
import json
import logging
from dataclasses import dataclass
from functools import lru_cache

logger = logging.getLogger(__name__)

DISTRIBUTION_NAME = "kgvacuum-cli"

FALLBACK_VERSION = "0.1.0"


@dataclass
class VersionInfo:
    display: str
    release: str
    sha: str | None  # short commit SHA for git installs
    is_local: bool  # editable or directory install


def _direct_url(dist: importlib.metadata.Distribution) -> dict:
    try:
        text = dist.read_text("direct_url.json")
        return json.loads(text) if text else {}
    except (OSError, ValueError) as e:
        logger.debug(f"unreadable direct_url.json: {e}")
        return {}


@lru_cache(maxsize=1)
def get_version_info() -> VersionInfo:
    try:
        dist = importlib.metadata.distribution(DISTRIBUTION_NAME)
    except importlib.metadata.PackageNotFoundError:
        return VersionInfo(display=FALLBACK_VERSION, release=FALLBACK_VERSION, sha=None, is_local=True)

    release = dist.version
    direct_url = _direct_url(dist)
    commit_id = direct_url.get("vcs_info", {}).get("commit_id", "")
    if commit_id:
        short_sha = commit_id[:7]
        return VersionInfo(display=f"{release}+{short_sha}", release=release, sha=short_sha, is_local=False)
    return VersionInfo(display=release, release=release, sha=None, is_local="dir_info" in direct_url)


def get_version() -> str:
    return get_version_info().display


__all__ = ["VersionInfo", "get_version_info", "get_version"]
