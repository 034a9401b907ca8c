#!/usr/bin/env python3
"""Regenerates include/phonogest/defaults.hpp from the files in config/."""
import pathlib

root = pathlib.Path(__file__).resolve().parent.parent
parts = []
for name, ident in [("lattice.cfg", "kDefaultLattice"), ("inventory.cfg", "kDefaultInventory"),
                    ("parameters.cfg", "kDefaultParameters")]:
    text = (root / "config" / name).read_text(encoding="utf-8")
    parts.append(f'inline constexpr std::string_view {ident} = R"cfg({text})cfg";\n')

out = """#pragma once

// Generated by tools/embed_defaults.py from config/*.cfg. Do not edit.

#include <string_view>

namespace phonogest::defaults {

""" + "\n".join(parts) + """
}  // namespace phonogest::defaults
"""
(root / "include" / "phonogest" / "defaults.hpp").write_text(out, encoding="utf-8")
