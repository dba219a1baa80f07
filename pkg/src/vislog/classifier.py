"""Behavioral user typing: every user gets exactly one of four types.

The ladder is a strict precedence: own-data use dominates returning
behavior, so a demo-only user with many visits stays a demo user.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .sessionizer import Corpus, UserRecord


class UserType(str, Enum):
    DEMO = "Demo"
    DATA_STRUGGLER = "Data_Struggler"
    SS_EXPLORER = "SS_Explorer"
    MS_EXPLORER = "MS_Explorer"


@dataclass(frozen=True)
class UserSignals:
    used_own_data: bool
    created_network: bool
    visit_count: int
    networks_created: int


def extract_signals(user: UserRecord) -> UserSignals:
    networks_created = sum(1 for e in user.events if e.name == "create_network_success")
    return UserSignals(
        used_own_data=any(e.name == "upload_own_data" for e in user.events),
        created_network=networks_created >= 1,
        visit_count=user.visit_count,
        networks_created=networks_created,
    )


def classify_user(signals: UserSignals) -> UserType:
    if not signals.used_own_data:
        return UserType.DEMO
    if not signals.created_network:
        return UserType.DATA_STRUGGLER
    if signals.visit_count <= 1:
        return UserType.SS_EXPLORER
    return UserType.MS_EXPLORER


def classify_corpus(corpus: Corpus) -> tuple[dict[str, UserType], dict[UserType, int]]:
    """Type every user; returns the per-user map and counts per type."""
    types: dict[str, UserType] = {}
    counts: dict[UserType, int] = {t: 0 for t in UserType}
    for user in corpus:
        t = classify_user(extract_signals(user))
        types[user.user_id] = t
        counts[t] += 1
    return types, counts
