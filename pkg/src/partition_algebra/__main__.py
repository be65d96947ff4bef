"""Entry point for partition-algebra."""

from .cli import app

if __name__ == "__main__":
    app()
