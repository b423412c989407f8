"""Error taxonomy shared by the library and the CLI.

The CLI maps each class to a fixed process exit code, so library code
should raise the most specific class that applies:

* ``UsageError`` (exit 1): a caller asked for something the operation
  cannot do (bad parameter value, missing seed, size out of range).
* ``MalformedInputError`` (exit 2): input text or a count table is
  structurally broken (parse failure, negative count, invalid tree file).
* ``InvalidInputError`` (exit 3): input parses but is semantically
  unusable (key outside the universe, mismatched universes, inconsistent
  totals).
"""


class ToolError(Exception):
    exit_code = 1


class UsageError(ToolError):
    exit_code = 1


class MalformedInputError(ToolError):
    exit_code = 2


class InvalidInputError(ToolError):
    exit_code = 3
