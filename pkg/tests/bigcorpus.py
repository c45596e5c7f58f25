"""Deterministic generator for a ~10 KLOC synthetic Java tree.

Used by throughput and determinism tests; a fixed seed makes every run
produce byte-identical sources.
"""

import random
from pathlib import Path

_WORDS = (
    "account alarm batch buffer cache channel client cluster color config "
    "counter cursor data depth device draw edge engine entry event field "
    "filter frame graph grid group handle header index input item job key "
    "label layer limit line link list lock log map mark menu mesh message "
    "meta mode model name net node offset order output packet page panel "
    "parser path pixel plot point pool port query queue range record region "
    "render report request result root route row scale scan schema scope "
    "screen seed segment sensor server session shape signal slot socket "
    "source stack stage store stream style table task text tile timer token "
    "track tree unit user value vector view widget window zone"
).split()


def _camel(rng: random.Random, parts: int) -> str:
    return "".join(w.capitalize() for w in rng.sample(_WORDS, parts))


def _lower_camel(rng: random.Random, parts: int) -> str:
    words = rng.sample(_WORDS, parts)
    return words[0] + "".join(w.capitalize() for w in words[1:])


def _class_source(rng: random.Random, package: str, name: str) -> str:
    lines = [
        f"package {package};",
        "",
        f"/** Generated model type {name}. */",
        f"public class {name} {{",
        "",
    ]
    fields = [_lower_camel(rng, rng.randint(1, 3)) for _ in range(rng.randint(3, 6))]
    for field in fields:
        if rng.random() < 0.5:
            lines.append(f"    private int {field};")
        else:
            lines.append(f'    private String {field} = "{rng.choice(_WORDS)}";')
    lines.append("")
    first = fields[0]
    lines += [
        f"    public {name}(int seedValue) {{",
        f"        // seed {rng.randint(0, 9999)}",
        "    }",
        "",
    ]
    for field in fields:
        accessor = field[0].upper() + field[1:]
        lines += [
            f"    public int get{accessor}() {{",
            f"        return {first}.hashCode();",
            "    }",
            "",
            f"    public void set{accessor}(int value) {{",
            f"        // store into {field}",
            "    }",
            "",
        ]
    for _ in range(rng.randint(2, 4)):
        method = _lower_camel(rng, rng.randint(2, 3))
        lines += [
            f"    public String {method}(int depth) {{",
            "        StringBuilder out = new StringBuilder();",
            "        for (int i = 0; i < depth; i++) {",
            f'            out.append("{rng.choice(_WORDS)} ");',
            "        }",
            "        return out.toString();",
            "    }",
            "",
        ]
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_big_corpus(root: Path, classes: int = 145, seed: int = 20260810) -> int:
    """Write the synthetic tree under ``root``; returns its total line count."""
    rng = random.Random(seed)
    total_lines = 0
    for index in range(classes):
        package = f"com.gen.p{index % 7}"
        directory = root / Path(*package.split("."))
        directory.mkdir(parents=True, exist_ok=True)
        name = _camel(rng, 2) + str(index)
        text = _class_source(rng, package, name)
        (directory / f"{name}.java").write_text(text, encoding="utf-8")
        total_lines += text.count("\n")
    return total_lines
