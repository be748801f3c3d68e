#!/usr/bin/env python3
# Copyright 2026 The ldq Authors.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Prepends the Apache-2.0 header to first-party sources that lack it."""

import pathlib
import sys

NOTICE = """Copyright 2026 The ldq Authors.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.""".splitlines()

ROOTS = ["CMakeLists.txt", "include", "src", "tests", "tools"]


def c_block():
    body = "\n".join((" * " + line).rstrip() for line in NOTICE)
    return "/*\n" + body + "\n */\n\n"


def hash_block():
    return "\n".join(("# " + line).rstrip() for line in NOTICE) + "\n\n"


def header_for(path):
    if path.suffix in (".cc", ".h"):
        return c_block()
    if path.suffix == ".py" or path.name == "CMakeLists.txt":
        return hash_block()
    return None


def main():
    root = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else ".")
    changed = 0
    for entry in ROOTS:
        base = root / entry
        paths = [base] if base.is_file() else sorted(p for p in base.rglob("*") if p.is_file())
        for path in paths:
            header = header_for(path)
            if header is None:
                continue
            text = path.read_text()
            if NOTICE[0] in text[:512]:
                continue
            shebang = ""
            if text.startswith("#!"):
                shebang, _, text = text.partition("\n")
                shebang += "\n"
            path.write_text(shebang + header + text)
            changed += 1
    print(f"added headers to {changed} files")


if __name__ == "__main__":
    main()
