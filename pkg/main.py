"""命令行入口

    python main.py check --equation "u3 + 6*u*u1" --candidate "1 + 6*t*u1"
    python main.py corpus run corpus/equations.corpus
"""
from cli import main


if __name__ == "__main__":
    main()
