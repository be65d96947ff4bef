"""Progress display helpers."""

from typing import Iterable, Optional, Sequence, TypeVar

from rich.console import Console
from rich.progress import track

T = TypeVar("T")


def progress(
    items: Sequence[T], console: Optional[Console], description: str
) -> Iterable[T]:
    """Wrap a sequence in a rich progress bar when a console is given.

    Library code takes an optional console; without one it stays silent.
    """
    if console is None:
        return items
    return track(items, description=description, console=console, transient=True)
