"""Artifact input and output"""

from nucleuskit.manager.artifact_manager import ArtifactManager, render_json

__all__ = ["ArtifactManager", "render_json"]
