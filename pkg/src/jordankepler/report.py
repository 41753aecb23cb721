"""Verification reports: per-relation trial/failure bookkeeping.

Reports are plain dicts so they serialize deterministically; failure
dumps carry the exact rational inputs that broke a relation.
"""

from .rational import rat_str

MAX_FAILURE_DUMPS = 3


class RelationLog:
    def __init__(self, name):
        self.name = name
        self.trials = 0
        self.failures = 0
        self.dumps = []

    def record(self, ok, dump=None):
        self.trials += 1
        if not ok:
            self.failures += 1
            if dump is not None and len(self.dumps) < MAX_FAILURE_DUMPS:
                self.dumps.append(dump)
        return ok

    def to_dict(self):
        out = {"trials": self.trials, "failures": self.failures}
        if self.dumps:
            out["counterexamples"] = self.dumps
        return out


class Suite:
    """Collects relation logs for one verification suite."""

    def __init__(self, suite, **params):
        self.suite = suite
        self.params = params
        self._relations = {}

    def relation(self, name) -> RelationLog:
        if name not in self._relations:
            self._relations[name] = RelationLog(name)
        return self._relations[name]

    @property
    def passed(self):
        return all(r.failures == 0 for r in self._relations.values())

    def to_dict(self):
        return {
            "suite": self.suite,
            "params": dict(sorted(self.params.items())),
            "relations": {
                name: log.to_dict()
                for name, log in sorted(self._relations.items())
            },
            "passed": self.passed,
        }


def dump_inputs(**named_vectors):
    """Serialize counterexample inputs as exact "p/q" strings."""
    out = {}
    for name, value in named_vectors.items():
        if isinstance(value, (list, tuple)):
            out[name] = [rat_str(x) for x in value]
        else:
            out[name] = rat_str(value)
    return out
