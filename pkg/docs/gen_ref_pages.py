"""Generate the API reference pages of the changewatch package

One page per module, grouped by subpackage, plus the hand-written index
of docs/code/. Run by the mkdocs gen-files plugin.
"""

from pathlib import Path

import mkdocs_gen_files

PACKAGE = "changewatch"
REF_PATH = Path("code")
SKIPPED = {"__init__", "__version__", "__main__"}


def module_pages(package_dir: Path) -> list[tuple[tuple[str, ...], Path]]:
    """List the modules of a package with their reference page paths

    Args:
        package_dir (Path): Package source directory

    Returns:
        list[tuple[tuple[str, ...], Path]]: Dotted name parts and page path
    """

    pages = []
    for source in sorted(package_dir.rglob("*.py")):
        relative = source.relative_to(package_dir).with_suffix("")
        if relative.name in SKIPPED:
            continue
        pages.append((relative.parts, relative.with_suffix(".md")))
    return pages


nav = mkdocs_gen_files.Nav()
nav["index"] = "index.md"
with mkdocs_gen_files.open(REF_PATH / "index.md", "w") as index_page:
    index_page.write(Path("docs", REF_PATH, "index.md").read_text(encoding="utf-8"))

for parts, page in module_pages(Path(PACKAGE)):
    nav[parts] = page.as_posix()
    with mkdocs_gen_files.open(REF_PATH / page, "w") as fd:
        fd.write(f"::: {PACKAGE}.{'.'.join(parts)}\n")
    mkdocs_gen_files.set_edit_path(REF_PATH / page, Path(PACKAGE, *parts).with_suffix(".py"))

with mkdocs_gen_files.open(REF_PATH / "SUMMARY.md", "w") as nav_file:
    nav_file.writelines(nav.build_literate_nav())
