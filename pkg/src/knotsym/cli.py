"""Command-line front end: thin JSON client over the HTTP service.

By default each command calls the in-process service; with --url it talks to
a remote instance instead.  Output is canonical JSON (sorted keys) on stdout;
diagnostics go to stderr.  Exit codes: 0 success, 1 domain error, 2 usage
error, 3 flagged contradiction or failed verification.
"""

from __future__ import annotations

import json
import sys

import click

EXIT_DOMAIN = 1
EXIT_VERIFICATION = 3


class _Client:
    def __init__(self, url: str | None):
        if url is None:
            import warnings

            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service import app

            self._client = TestClient(app, raise_server_exceptions=False)
            self._base = ""
        else:
            import httpx

            self._client = httpx.Client()
            self._base = url.rstrip("/")

    def post(self, path: str, payload: dict):
        return self._client.post(self._base + path, json=payload)


def _emit(resp) -> None:
    try:
        body = resp.json()
    except ValueError:
        click.echo(f"non-JSON response (status {resp.status_code})", err=True)
        sys.exit(EXIT_VERIFICATION)
    click.echo(json.dumps(body, sort_keys=True, indent=2))
    if resp.status_code == 400:
        sys.exit(EXIT_DOMAIN)
    if resp.status_code >= 500:
        sys.exit(EXIT_VERIFICATION)
    if resp.status_code != 200:
        click.echo(f"unexpected status {resp.status_code}", err=True)
        sys.exit(EXIT_DOMAIN)
    if isinstance(body, dict) and body.get("verified") is False:
        click.echo("verification failed: refine does not equal the target", err=True)
        sys.exit(EXIT_VERIFICATION)


def _call(ctx: click.Context, path: str, payload: dict) -> None:
    _emit(_Client(ctx.obj["url"]).post(path, payload))


def _parse_edge(text: str) -> list[int]:
    try:
        parts = [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise click.UsageError(f"edge must be two integers, got {text!r}") from None
    if len(parts) != 2:
        raise click.UsageError(f"edge must be two integers, got {text!r}")
    return parts


def _parse_edges(text: str | None) -> list[list[int]] | None:
    if text is None:
        return None
    return [_parse_edge(part) for part in text.split(";") if part.strip()]


@click.group()
@click.option("--url", default=None, help="Base URL of a running service; default runs in-process.")
@click.option("--seed", default=None, type=int, hidden=True, help="Ignored; commands are deterministic.")
@click.pass_context
def main(ctx: click.Context, url: str | None, seed: int | None):
    """Symmetry groups of spatial graphs with locally knotted edges."""
    ctx.ensure_object(dict)
    ctx.obj["url"] = url


@main.command("check-automorphism")
@click.option("--n", required=True, type=int, help="Vertex count of the complete graph.")
@click.option("--perm", required=True, help="Permutation in 1-indexed cycle notation.")
@click.pass_context
def cmd_check_automorphism(ctx, n: int, perm: str):
    """Test one automorphism against the four realizability conditions."""
    _call(ctx, "/check-automorphism", {"n": n, "perm": perm})


@main.command("classify")
@click.option("--m", required=True, type=int, help="Odd m >= 3; the ambient product acts on 2m points.")
@click.option("--gens", required=True, multiple=True, help="Subgroup generators in cycle notation (repeatable).")
@click.pass_context
def cmd_classify(ctx, m: int, gens):
    """Classify a subgroup of the odd dihedral square into its family."""
    _call(ctx, "/classify", {"m": m, "gens": list(gens)})


@main.command("shape")
@click.option("--n", required=True, type=int)
@click.option("--gens", required=True, multiple=True)
@click.pass_context
def cmd_shape(ctx, n: int, gens):
    """Test whether a group's isomorphism type is a realizable shape."""
    _call(ctx, "/shape", {"n": n, "gens": list(gens)})


@main.command("realize")
@click.option("--n", required=True, type=int)
@click.option("--graph-edges", default=None, help='Edges as "u v;u v;..."; default complete graph.')
@click.option("--ambient-gens", required=True, multiple=True)
@click.option("--target-gens", multiple=True)
@click.option("--alphabet", default=None, help='JSON list of {"symbol", "invertible"} knots.')
@click.option("--max-edge-set", default=3, type=int, show_default=True)
@click.pass_context
def cmd_realize(ctx, n, graph_edges, ambient_gens, target_gens, alphabet, max_edge_set):
    """Produce a knot-labeling certificate realizing the target subgroup."""
    payload = {
        "n": n,
        "graph_edges": _parse_edges(graph_edges),
        "ambient_gens": list(ambient_gens),
        "target_gens": list(target_gens),
        "max_edge_set": max_edge_set,
    }
    if alphabet is not None:
        try:
            payload["alphabet"] = json.loads(alphabet)
        except json.JSONDecodeError as exc:
            raise click.UsageError(f"--alphabet must be JSON: {exc}") from None
    _call(ctx, "/realize", payload)


@main.command("orbits")
@click.option("--n", required=True, type=int)
@click.option("--gens", required=True, multiple=True)
@click.option("--point", default=None, type=int)
@click.option("--edge", default=None)
@click.pass_context
def cmd_orbits(ctx, n, gens, point, edge):
    """Orbit of a point or an edge under the generated group."""
    _call(
        ctx,
        "/orbits",
        {"n": n, "gens": list(gens), "point": point, "edge": _parse_edge(edge) if edge else None},
    )


@main.command("stabilizer")
@click.option("--n", required=True, type=int)
@click.option("--gens", required=True, multiple=True)
@click.option("--edge", required=True)
@click.pass_context
def cmd_stabilizer(ctx, n, gens, edge):
    """Pointwise stabilizer of an edge."""
    _call(ctx, "/stabilizer", {"n": n, "gens": list(gens), "edge": _parse_edge(edge)})


@main.command("subgroups")
@click.option("--n", required=True, type=int)
@click.option("--gens", required=True, multiple=True)
@click.pass_context
def cmd_subgroups(ctx, n, gens):
    """Enumerate every subgroup of the generated group."""
    _call(ctx, "/subgroups", {"n": n, "gens": list(gens)})


@main.command("verify-lemma2")
@click.option("--m", required=True, type=int)
@click.pass_context
def cmd_verify_lemma2(ctx, m: int):
    """Full classification sweep over all subgroups of the odd dihedral square."""
    _call(ctx, "/verify-lemma2", {"m": m})


@main.command("hypothesis")
@click.option("--n", required=True, type=int)
@click.option("--graph-edges", default=None)
@click.option("--ambient-gens", required=True, multiple=True)
@click.option("--target-gens", multiple=True)
@click.option("--edges", required=True, help='Witness edges as "u v;u v;..."')
@click.pass_context
def cmd_hypothesis(ctx, n, graph_edges, ambient_gens, target_gens, edges):
    """Check the orbit-preservation hypothesis for an edge set."""
    _call(
        ctx,
        "/hypothesis",
        {
            "n": n,
            "graph_edges": _parse_edges(graph_edges),
            "ambient_gens": list(ambient_gens),
            "target_gens": list(target_gens),
            "edges": _parse_edges(edges),
        },
    )


@main.command("free-edge")
@click.option("--n", required=True, type=int)
@click.option("--graph-edges", default=None)
@click.option("--gens", required=True, multiple=True)
@click.pass_context
def cmd_free_edge(ctx, n, graph_edges, gens):
    """First edge with trivial pointwise stabilizer, if any."""
    _call(ctx, "/free-edge", {"n": n, "graph_edges": _parse_edges(graph_edges), "gens": list(gens)})


@main.command("prop1")
@click.option("--n", required=True, type=int)
@click.option("--alpha", required=True)
@click.option("--beta", default=None)
@click.option("--gens", multiple=True, help="Extra group generators beyond alpha/beta.")
@click.pass_context
def cmd_prop1(ctx, n, alpha, beta, gens):
    """Witness edge for a cyclic or dihedral group."""
    _call(ctx, "/prop1", {"n": n, "alpha": alpha, "beta": beta, "gens": list(gens) or None})


@main.command("prop2")
@click.option("--n", required=True, type=int)
@click.option("--alpha", required=True)
@click.option("--beta", required=True)
@click.option("--gens", multiple=True)
@click.pass_context
def cmd_prop2(ctx, n, alpha, beta, gens):
    """Witness edge for a group containing commuting odd rotations."""
    _call(ctx, "/prop2", {"n": n, "alpha": alpha, "beta": beta, "gens": list(gens) or None})


@main.command("refine")
@click.option("--n", required=True, type=int)
@click.option("--graph-edges", default=None)
@click.option("--gens", required=True, multiple=True)
@click.option(
    "--labels",
    required=True,
    help='JSON list of {"edge", "factors": [{"symbol", "invertible", "sign"}], "orientation"?}.',
)
@click.pass_context
def cmd_refine(ctx, n, graph_edges, gens, labels):
    """Subgroup of the base group preserving all knot labels."""
    try:
        parsed = json.loads(labels)
    except json.JSONDecodeError as exc:
        raise click.UsageError(f"--labels must be JSON: {exc}") from None
    _call(
        ctx,
        "/refine",
        {"n": n, "graph_edges": _parse_edges(graph_edges), "gens": list(gens), "labels": parsed},
    )


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, type=int, show_default=True)
def cmd_serve(host: str, port: int):
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
