from .parser import (
    Token,
    tokenize,
    ExprParser,
    parse,
)
from .corpus import (
    parse_corpus,
    load_corpus,
    run_entry,
    run_corpus,
    run_corpus_file,
)
from .commands import (
    build_parser,
    runtime_config,
    run,
    main,
    EXIT_OK,
    EXIT_MISMATCH,
    EXIT_USAGE,
)

__all__ = [
    # 解析
    "Token",
    "tokenize",
    "ExprParser",
    "parse",
    # 语料
    "parse_corpus",
    "load_corpus",
    "run_entry",
    "run_corpus",
    "run_corpus_file",
    # 命令行
    "build_parser",
    "runtime_config",
    "run",
    "main",
    "EXIT_OK",
    "EXIT_MISMATCH",
    "EXIT_USAGE",
]
