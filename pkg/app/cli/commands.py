"""Subcommand implementations"""

import argparse

from pydantic import BaseModel

from app.cli.base import Command
from app.cli.session import CommandSession
from app.core_math.characters import induced_character, truncated_character
from app.core_math.weights import Ambient
from app.central_chars import (
    TypicalityKind,
    classify,
    extremal_weights,
    g0_char_of,
    g_char_of,
    verma_properties,
)
from app.equivalence import (
    Direction,
    build_context,
    pi_prime,
    pi_prime_via_composition,
    round_trip,
    weights_of_block,
)
from app.mates import construct_mate, verify_mate, verify_perfect
from app.root_systems import list_families_with_descriptions
from app.root_systems.operations import require_b0n
from app.schemas import (
    BlocksResponse,
    CharacterCheckOut,
    EquivResponse,
    FamiliesResponse,
    FamilyInfo,
    FlagResponse,
    MateResponse,
    OrbitResponse,
    PiPrimeOut,
)
from app.schemas.builders import (
    block_out,
    character_out,
    classify_response,
    flag_out,
    mate_fields,
    perfect_response,
    roots_response,
    round_trip_out,
    weights_out,
)
from app.verma_flags import (
    GradedVermaFlag,
    block_decompose,
    induction_flag,
    restriction_flag,
)
from app.weyl import canonical_rep, orbit, stabilizer

_FAMILY_EXAMPLES = {
    "B0n": ["B(0,2)", "osp(1,4)", "B(0,3)"],
    "GLmn": ["gl(1,1)", "gl(2,1)"],
    "Bmn": ["B(1,1)", "osp(3,2)"],
}


def _add_weight_arguments(parser: argparse.ArgumentParser, required: bool = True) -> None:
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("--weight", help="lambda as comma-separated rationals, e.g. 1/2,-1/2")
    group.add_argument(
        "--lambda-plus-rho", dest="lambda_plus_rho", help="lambda + rho, e.g. 2,0"
    )


def _add_chi_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--chi-weight",
        dest="chi_weight",
        help="Use the g0 central character of M(mu) for this mu instead of the default mate",
    )


class FamiliesCommand(Command):
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        pass

    def execute(self, args: argparse.Namespace, session: CommandSession) -> BaseModel:
        return FamiliesResponse(
            families=[
                FamilyInfo(name=name, description=text, examples=_FAMILY_EXAMPLES.get(name, []))
                for name, text in list_families_with_descriptions().items()
            ]
        )

    def get_description(self) -> str:
        return "List the supported root-system families"


class RootsCommand(Command):
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        pass

    def execute(self, args: argparse.Namespace, session: CommandSession) -> BaseModel:
        data = session.family(args)
        return roots_response(data, session.group(data, args).order)

    def get_description(self) -> str:
        return "Positive roots, form, simple roots and rho-vectors of a family"


class ClassifyCommand(Command):
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        _add_weight_arguments(parser)

    def execute(self, args: argparse.Namespace, session: CommandSession) -> BaseModel:
        data = session.family(args)
        G = session.group(data, args)
        lam = session.weight(data, args)
        result = classify(data, lam)
        verma = verma_properties(data, G, lam) if result.is_typical else None
        return classify_response(data, result, g_char_of(data, G, lam), verma)

    def get_description(self) -> str:
        return "Typicality of the central character of M~(lambda), with T and Q values"


class OrbitCommand(Command):
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        _add_weight_arguments(parser)
        parser.add_argument(
            "--action",
            choices=["dot", "dot0", "linear"],
            default="dot",
            help="dot: w(mu+rho)-rho; dot0: w(mu+rho0)-rho0; linear: w(mu) (default: dot)",
        )

    def execute(self, args: argparse.Namespace, session: CommandSession) -> BaseModel:
        data = session.family(args)
        G = session.group(data, args)
        lam = session.weight(data, args)
        shift = {"dot": data.rho, "dot0": data.rho0, "linear": None}[args.action]
        points = orbit(G, lam, shifted_by=shift)
        moved = lam if shift is None else lam + shift
        maximal = minimal = None
        if args.action == "dot" and classify(data, lam).kind is not TypicalityKind.ATYPICAL:
            maximal, minimal = extremal_weights(data, G, g_char_of(data, G, lam))
        return OrbitResponse(
            family=data.spec.label,
            weight=lam.to_json(),
            action=args.action,
            size=len(points),
            orbit=weights_out(points),
            canonical_rep=canonical_rep(G, moved).to_json(),
            stabilizer_order=stabilizer(G, moved).order,
            maximal=weights_out(maximal) if maximal is not None else None,
            minimal=weights_out(minimal) if minimal is not None else None,
        )

    def get_description(self) -> str:
        return "Weyl orbit of a weight under the dot, rho0-dot or linear action"


class FlagCommand(Command):
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        _add_weight_arguments(parser)
        parser.add_argument(
            "--kind",
            choices=["restriction", "induction"],
            default="restriction",
            help="Flag of the restriction of M~(lambda) or of the module induced from M(lambda)",
        )
        parser.add_argument("--parity", type=int, choices=[0, 1], default=0, help="Base parity")
        parser.add_argument(
            "--check",
            action="store_true",
            help="Compare truncated characters of the flag and of the module at --depth",
        )

    def execute(self, args: argparse.Namespace, session: CommandSession) -> BaseModel:
        data = session.family(args)
        lam = session.weight(data, args)
        if args.kind == "restriction":
            flag = restriction_flag(data, lam, base_parity=args.parity)
        else:
            flag = induction_flag(data, lam, base_parity=args.parity)

        check = None
        if args.check:
            depth = session.depth(args)
            if args.kind == "restriction":
                module = truncated_character(data, GradedVermaFlag.single(Ambient.G, lam), depth)
            else:
                module = induced_character(data, lam, depth)
            from_flag = truncated_character(data, flag, depth)
            check = CharacterCheckOut(depth=depth, equal=module == from_flag, weights_compared=len(module))

        return FlagResponse(
            family=data.spec.label,
            kind=args.kind,
            weight=lam.to_json(),
            base_parity=args.parity,
            ambient=flag.ambient.value,
            entries=flag_out(flag),
            character_check=check,
        )

    def get_description(self) -> str:
        return "Graded Verma flag of a restricted or induced Verma module of osp(1,2l)"


class BlocksCommand(Command):
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        _add_weight_arguments(parser)
        parser.add_argument("--parity", type=int, choices=[0, 1], default=0, help="Base parity")

    def execute(self, args: argparse.Namespace, session: CommandSession) -> BaseModel:
        data = session.family(args)
        G = session.group(data, args)
        lam = session.weight(data, args)
        flag = restriction_flag(data, lam, base_parity=args.parity)
        blocks = block_decompose(data, G, flag)
        return BlocksResponse(
            family=data.spec.label,
            weight=lam.to_json(),
            ambient=flag.ambient.value,
            total=len(flag),
            blocks=[block_out(chi, block) for chi, block in blocks.items()],
        )

    def get_description(self) -> str:
        return "Central-character blocks of the restriction flag of M~(lambda)"


class MateCommand(Command):
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        _add_weight_arguments(parser)
        _add_chi_argument(parser)

    def execute(self, args: argparse.Namespace, session: CommandSession) -> BaseModel:
        data = session.family(args)
        require_b0n(data, "mate")
        G = session.group(data, args)
        chi_tilde = g_char_of(data, G, session.weight(data, args))
        lam, chi = construct_mate(data, G, chi_tilde)
        chi_weight = session.optional_weight(data, args, "chi-weight")
        if chi_weight is not None:
            chi = g0_char_of(data, G, chi_weight)
        report = verify_mate(data, G, lam, chi)
        perfect = verify_perfect(data, G, lam, chi, threads=session.threads(args))
        return MateResponse(
            family=data.spec.label,
            weight=lam.to_json(),
            lambda_plus_rho=(lam + data.rho).to_json(),
            chi_tilde=character_out(chi_tilde),
            chi=character_out(chi),
            is_perfect=perfect.is_perfect,
            perfect=perfect_response(data, perfect, verbose=args.verbose),
            **mate_fields(report),
        )

    def get_description(self) -> str:
        return "Construct the mate of a generic weakly atypical block and verify it"


class VerifyPerfectCommand(Command):
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        _add_weight_arguments(parser)
        _add_chi_argument(parser)

    def execute(self, args: argparse.Namespace, session: CommandSession) -> BaseModel:
        data = session.family(args)
        require_b0n(data, "verify-perfect")
        G = session.group(data, args)
        lam = session.weight(data, args)
        chi_weight = session.optional_weight(data, args, "chi-weight")
        chi = g0_char_of(data, G, chi_weight if chi_weight is not None else lam)
        report = verify_perfect(data, G, lam, chi, threads=session.threads(args))
        return perfect_response(data, report, verbose=args.verbose)

    def get_description(self) -> str:
        return "Exhaustive perfect-mate checks for lambda over the whole Weyl group"


class EquivCommand(Command):
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        _add_weight_arguments(parser)
        _add_chi_argument(parser)

    def execute(self, args: argparse.Namespace, session: CommandSession) -> BaseModel:
        data = session.family(args)
        G = session.group(data, args)
        lam = session.weight(data, args)
        chi_weight = session.optional_weight(data, args, "chi-weight")
        chi = g0_char_of(data, G, chi_weight) if chi_weight is not None else None
        ctx = build_context(data, G, g_char_of(data, G, lam), chi=chi)

        trips = []
        g_weights, g0_flags = weights_of_block(ctx)
        for weight in g_weights:
            for parity in (0, 1):
                source = GradedVermaFlag.single(Ambient.G, weight, parity)
                trips.append(round_trip(ctx, source, Direction.PSI_PHI))
        for flag in g0_flags:
            trips.append(round_trip(ctx, flag, Direction.PHI_PSI))

        primes = None
        if ctx.is_weak:
            primes = []
            for flag in g0_flags:
                image = pi_prime(ctx, flag)
                primes.append(
                    PiPrimeOut(
                        input=flag_out(flag),
                        output=flag_out(image),
                        matches_composition=image == pi_prime_via_composition(ctx, flag),
                        involution=pi_prime(ctx, image) == flag,
                    )
                )

        reports = [round_trip_out(t) for t in trips]
        return EquivResponse(
            family=data.spec.label,
            mode=ctx.mode.value,
            chi_tilde=character_out(ctx.chi_tilde),
            chi=character_out(ctx.chi),
            note="Functors are evaluated on Verma flags (multisets of highest weights with parity)",
            round_trips=reports,
            all_equal=all(r.equal for r in reports),
            pi_prime=primes,
        )

    def get_description(self) -> str:
        return "Round trips of Psi and Phi on every single-Verma flag of a block"
