from dataclasses import dataclass

from models.Dfa import Word


@dataclass(frozen=True)
class SyncCertificate:
    # q · word == target for every state q when per_state_check holds
    word: Word
    target: int
    per_state_check: bool
