# Copyright (c) 2026 The Intrication Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
"""
The ``intrication`` command line program.

Sub-commands:

* ``gen``: write a named or random state to a state file.
* ``check``: evaluate the criteria on a state file.
* ``threshold``: find the noise weight where a criterion stops detecting
  entanglement.
* ``oracle``: run the criteria on random separable states.

Exit codes: 0 success, 2 invalid input, 3 I/O error, 4 bracket failure,
5 soundness violation.
"""
import argparse
import json
import logging
import os
import sys

from ._criteria import (
    NOISE_FAMILIES,
    CriterionId,
    closed_form_threshold,
    critical_noise,
    evaluate,
)
from ._exceptions import BracketError
from ._io import (
    evaluation_to_dict,
    format_evaluation,
    format_summary,
    read_state_file,
    state_to_dict,
    summary_to_dict,
    write_state_file,
)
from ._oracle import OracleRunSpec, run_soundness
from ._states import (
    NoiseFamilyParams,
    SamplingMode,
    SeparableSampleSpec,
    ghz,
    ghz_qudit,
    ghz_white_noise,
    random_pure_product,
    random_separable_mixture,
    w_state,
    white_noise,
)
from ._tensor_index import Bipartition
from ._version import __version__

LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_IO = 3
EXIT_BRACKET = 4
EXIT_VIOLATION = 5

#: Environment variable with the default report format
FORMAT_VARIABLE = "INTRICATION_FORMAT"
FORMATS = ("text", "json")

#: Command line names of the sampling modes
MODE_NAMES = {
    "full-sep": SamplingMode.FULLY_SEPARABLE,
    "bisep-fixed": SamplingMode.BISEPARABLE_FIXED,
    "bisep-mixed": SamplingMode.BISEPARABLE_MIXED,
}

STATE_KINDS = (
    "ghz",
    "ghz-noise",
    "w",
    "ghz-qudit",
    "random-product",
    "random-separable",
)


def _int_list(text):
    "argparse type for comma separated integers such as '2,2,3'"
    try:
        return [int(item) for item in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"invalid list '{text}', should be comma separated integers"
        ) from None


def _modes(text):
    "argparse type for a comma separated list of sampling modes"
    if text == "all":
        return list(SamplingMode)
    modes = []
    for name in text.split(","):
        if name not in MODE_NAMES:
            raise argparse.ArgumentTypeError(
                f"invalid mode '{name}', should be one of {', '.join(MODE_NAMES)}, all"
            )
        modes.append(MODE_NAMES[name])
    return modes


def _partition(text):
    "argparse type for a bipartition such as '1,2|3'"
    try:
        return Bipartition.parse(text)
    except ValueError as error:
        raise argparse.ArgumentTypeError(str(error)) from None


def _default_format():
    "The report format selected by the environment, text if unset"
    value = os.environ.get(FORMAT_VARIABLE, "text").strip().lower()
    if value not in FORMATS:
        LOGGER.warning(
            "Ignoring invalid %s='%s'. Should be one of %s.",
            FORMAT_VARIABLE,
            value,
            FORMATS,
        )
        return "text"
    return value


def _require(args, *names):
    "Raise if any of the named options wasn't given"
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise ValueError(
            f"State kind '{args.kind}' requires {', '.join(missing)}."
        )


def build_state(args):
    """
    Create the state requested by the arguments of the ``gen`` sub-command.

    Returns
    -------
    rho : :class:`intrication.DensityMatrix`
    metadata : dict
    """
    kind = args.kind
    seed = None
    if kind == "ghz":
        _require(args, "n")
        rho = ghz(args.n)
        params = {"n": args.n}
    elif kind == "ghz-noise":
        _require(args, "n", "p")
        rho = ghz_white_noise(NoiseFamilyParams(args.n, args.p))
        params = {"n": args.n, "p": args.p}
    elif kind == "w":
        _require(args, "n")
        rho = w_state(args.n)
        params = {"n": args.n}
    elif kind == "ghz-qudit":
        _require(args, "n", "d")
        rho = ghz_qudit(args.n, args.d)
        params = {"n": args.n, "d": args.d}
    elif kind == "random-product":
        _require(args, "dims")
        seed = args.seed
        rho = random_pure_product(args.dims, seed)
        params = {"dims": ",".join(str(levels) for levels in args.dims)}
    else:
        _require(args, "dims")
        seed = args.seed
        spec = SeparableSampleSpec(
            args.dims,
            num_terms=args.terms,
            seed=seed,
            mode=MODE_NAMES[args.mode],
            partition=args.partition,
        )
        rho = random_separable_mixture(spec)
        params = {
            "dims": ",".join(str(levels) for levels in args.dims),
            "terms": args.terms,
            "mode": args.mode,
        }
        if args.partition is not None:
            params["partition"] = args.partition
    if args.noise is not None:
        if kind not in ("ghz", "w", "ghz-qudit"):
            raise ValueError(f"Option --noise doesn't apply to state kind '{kind}'.")
        rho = white_noise(rho, args.noise)
        params["noise"] = args.noise
    options = " ".join(f"--{name} {value}" for name, value in params.items())
    metadata = {
        "label": kind if args.label is None else args.label,
        "generator": f"intrication gen {kind} {options}",
        "seed": seed,
    }
    return rho, metadata


def _emit(text, output):
    "Write text to a file or to stdout"
    if output is None:
        print(text)
    else:
        with open(output, "w", encoding="utf-8") as stream:
            stream.write(text + "\n")
        LOGGER.info("Wrote %s", output)


def cmd_gen(args):
    "Write a state file."
    rho, metadata = build_state(args)
    if args.output is None:
        print(json.dumps(state_to_dict(rho, **metadata)))
    else:
        write_state_file(args.output, rho, **metadata)
        LOGGER.info("Wrote %s with dims %s", args.output, rho.dims.dims)
    return EXIT_OK


def cmd_check(args):
    "Evaluate the criteria on a state file and print the report."
    rho, metadata = read_state_file(args.path)
    evaluation = evaluate(rho, args.criteria, args.tol)
    source = {
        "path": str(args.path),
        "dims": list(rho.dims.dims),
        "label": metadata.get("label"),
    }
    if args.format == "json":
        text = json.dumps(evaluation_to_dict(evaluation, source), indent=2)
    else:
        text = format_evaluation(evaluation, source)
    _emit(text, args.output)
    return EXIT_OK


def cmd_threshold(args):
    "Print the critical noise weight of a criterion."
    criterion = CriterionId(args.criterion)
    bisection = critical_noise(
        criterion, args.n, args.lo, args.hi, tol=args.tol, family=args.family
    )
    closed_form = closed_form_threshold(criterion, args.n, family=args.family)
    result = {
        "criterion": criterion.value,
        "n": args.n,
        "family": args.family,
        "bisection": bisection,
        "closed_form": closed_form,
        "difference": None if closed_form is None else abs(bisection - closed_form),
        "tolerance": args.tol,
    }
    if args.format == "json":
        text = json.dumps(result, indent=2)
    else:
        lines = [
            f"criterion: {criterion.value} family={args.family} n={args.n}",
            f"bisection: {bisection!r}",
        ]
        if closed_form is not None:
            lines.append(f"closed form: {closed_form!r}")
            lines.append(f"difference: {result['difference']!r}")
        text = "\n".join(lines)
    _emit(text, None)
    return EXIT_OK


def cmd_oracle(args):
    "Run the soundness check and print the summary."
    options = {}
    if args.samples is not None:
        options["samples"] = args.samples
    spec = OracleRunSpec(
        args.dims,
        seed=args.seed,
        modes=args.mode,
        criteria=args.criteria,
        tol=args.tol,
        num_terms=args.terms,
        partition=args.partition,
        **options,
    )
    summary = run_soundness(spec)
    if args.format == "json":
        text = json.dumps(summary_to_dict(summary), indent=2)
    else:
        text = format_summary(summary)
    _emit(text, args.output)
    if not summary.sound:
        LOGGER.error("Soundness violated %d times", summary.violations)
        return EXIT_VIOLATION
    return EXIT_OK


def _add_format(parser):
    "Add the --format option with the environment default"
    parser.add_argument(
        "--format",
        choices=FORMATS,
        default=_default_format(),
        help=f"Report format. Defaults to ${FORMAT_VARIABLE} or text.",
    )


def make_parser():
    """
    Create the argument parser of the ``intrication`` program.
    """
    parser = argparse.ArgumentParser(
        prog="intrication",
        description="Detect multipartite entanglement with element-wise criteria.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log progress (-v) or every evaluation (-vv) to stderr.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="Write a state file.")
    gen.add_argument("kind", choices=STATE_KINDS)
    gen.add_argument("--n", type=int, help="Number of parties.")
    gen.add_argument("--p", type=float, help="Noise weight of ghz-noise.")
    gen.add_argument("--d", type=int, help="Levels of each ghz-qudit party.")
    gen.add_argument("--dims", type=_int_list, help="Local dimensions, e.g. 2,3,2.")
    gen.add_argument("--seed", type=int, default=0, help="Seed of random states.")
    gen.add_argument("--terms", type=int, default=1, help="Random mixture size.")
    gen.add_argument(
        "--mode",
        choices=list(MODE_NAMES),
        default="full-sep",
        help="Random mixture mode.",
    )
    gen.add_argument(
        "--partition", type=_partition, help="Bipartition of bisep-fixed, e.g. 1|2,3."
    )
    gen.add_argument(
        "--noise", type=float, help="Mix ghz, w, or ghz-qudit with white noise."
    )
    gen.add_argument("--label", help="Label stored in the file metadata.")
    gen.add_argument("--output", "-o", help="Output file. Defaults to stdout.")
    gen.set_defaults(run=cmd_gen)

    check = commands.add_parser("check", help="Evaluate the criteria on a state file.")
    check.add_argument("path", help="The state file.")
    check.add_argument(
        "--criteria", default="all", help="Comma separated ids (t1,...,t6) or all."
    )
    check.add_argument("--tol", type=float, default=1e-10, help="Margin tolerance.")
    _add_format(check)
    check.add_argument("--output", "-o", help="Report file. Defaults to stdout.")
    check.set_defaults(run=cmd_check)

    threshold = commands.add_parser(
        "threshold", help="Find the critical noise weight of a criterion."
    )
    threshold.add_argument(
        "--criterion", required=True, choices=[c.value for c in CriterionId]
    )
    threshold.add_argument("--n", type=int, required=True, help="Number of qubits.")
    threshold.add_argument(
        "--family", choices=sorted(NOISE_FAMILIES), default="ghz", help="Noisy state."
    )
    threshold.add_argument("--tol", type=float, default=1e-10, help="Bracket width.")
    threshold.add_argument("--lo", type=float, default=0.0, help="Lower bracket end.")
    threshold.add_argument("--hi", type=float, default=1.0, help="Upper bracket end.")
    _add_format(threshold)
    threshold.set_defaults(run=cmd_threshold)

    oracle = commands.add_parser(
        "oracle", help="Check the criteria on random separable states."
    )
    oracle.add_argument("--dims", type=_int_list, required=True)
    oracle.add_argument(
        "--samples", type=int, help="Samples per mode (10000 qubits, 1000 qudits)."
    )
    oracle.add_argument("--seed", type=int, default=0)
    oracle.add_argument(
        "--mode",
        type=_modes,
        default=list(SamplingMode),
        help="Comma separated full-sep, bisep-fixed, bisep-mixed, or all.",
    )
    oracle.add_argument("--criteria", default="all")
    oracle.add_argument("--tol", type=float, default=1e-10)
    oracle.add_argument("--terms", type=int, default=1, help="Mixture size.")
    oracle.add_argument("--partition", type=_partition)
    _add_format(oracle)
    oracle.add_argument("--output", "-o", help="Summary file. Defaults to stdout.")
    oracle.set_defaults(run=cmd_oracle)
    return parser


def _configure_logging(verbose):
    "Send log messages to stderr at the level chosen by -v"
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(
        level=level, format="%(levelname)s:%(name)s: %(message)s", stream=sys.stderr
    )


def main(argv=None):
    """
    Run the ``intrication`` program.

    Parameters
    ----------
    argv : list of str or None
        The arguments. Defaults to ``sys.argv[1:]``.

    Returns
    -------
    code : int
        The exit code.
    """
    args = make_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return args.run(args)
    except BracketError as error:
        LOGGER.error("%s", error)
        return EXIT_BRACKET
    except ValueError as error:
        LOGGER.error("%s", error)
        return EXIT_INPUT
    except OSError as error:
        LOGGER.error("%s", error)
        return EXIT_IO
