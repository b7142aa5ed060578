if __name__ == "__main__":
    import sys

    from dblhatch.cli.commands import main

    sys.exit(main())
