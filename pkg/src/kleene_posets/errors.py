"""Error taxonomy shared by every module.

Three kinds of failure are distinguished so the command line tool can map
them onto its exit-code contract:

* ``UsageError``   -- the caller misused the API (cross-poset subsets, an
                      invalid involution where a valid one is required,
                      unknown audit claims, ...).  CLI exit code 2.
* ``DomainError``  -- the input is well-formed but lacks a property the
                      operation needs (no bounds, not downward directed,
                      assignment space over the cap, ...).  CLI exit code 2.
* ``FixtureParseError`` -- a fixture file is malformed; carries the line
                      number.  CLI exit code 2.

Structural *falsity* (a poset failing to be a lattice, an identity failing
on some triple, ...) is never an exception: predicates return verdict
objects carrying witnesses instead.
"""


class UsageError(ValueError):
    """The API was called in a way the contract forbids."""


class DomainError(ValueError):
    """The structure lacks a property required by the operation."""


class FixtureParseError(ValueError):
    """A fixture file could not be parsed.  ``line`` is 1-based."""

    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message
