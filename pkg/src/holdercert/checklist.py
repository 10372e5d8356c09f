"""Declarative scalar-inequality checklist, certified over intervals.

Each item is one comparison expression in a small vocabulary:

    f(e), df(e)      the function x sin(1/x) and its derivative
    theta(n), alpha(n)  certified root data (integer literal n)
    pi, sqrt(e), sin(e), cos(e), numeric literals, + - * / **, unary -

Comparisons: ``a < b``, ``a > b`` (strict, interval-certified), chains
``a < b < c``, and ``a == b`` meaning certified agreement within 1e-12.
A trailing ``# text`` on a line is kept as the claim anchor.

The built-in corpus covers every scalar inequality consumed by the
contradiction arguments around the two delicate quotient maxima
(Props 2.2 and 2.4); it is parsed through the same loader as user files.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass

from . import interval as iv
from .checks import CheckResult, certified_equal, certified_less, merge_results
from .holder import df_iv, f_iv
from .interval import PI, Interval
from .roots import alpha_interval, theta_interval

EQUALITY_TOL = 1e-12


class ChecklistError(Exception):
    """Malformed checklist expression."""


@dataclass(frozen=True)
class ChecklistItem:
    item_id: str
    anchor: str
    expression: str


_FUNCTIONS = {
    "f": f_iv,
    "df": df_iv,
    "sqrt": iv.sqrt,
    "sin": iv.sin,
    "cos": iv.cos,
}


def _eval_node(node: ast.expr) -> Interval:
    if isinstance(node, ast.Constant):
        if isinstance(node.value, (int, float)) and not isinstance(node.value, bool):
            return Interval.point(float(node.value))
        raise ChecklistError(f"unsupported literal {node.value!r}")
    if isinstance(node, ast.Name):
        if node.id == "pi":
            return PI
        raise ChecklistError(f"unknown name {node.id!r}")
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_eval_node(node.operand)
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                raise ChecklistError("** requires an integer literal exponent")
            return _eval_node(node.left) ** node.right.value
        left, right = _eval_node(node.left), _eval_node(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            return left / right
        raise ChecklistError(f"unsupported operator {node.op!r}")
    if isinstance(node, ast.Call):
        if not isinstance(node.func, ast.Name) or node.keywords or len(node.args) != 1:
            raise ChecklistError("calls must be name(single_argument)")
        name = node.func.id
        if name in ("theta", "alpha"):
            arg = node.args[0]
            if not (isinstance(arg, ast.Constant) and isinstance(arg.value, int)):
                raise ChecklistError(f"{name}() requires an integer literal index")
            return theta_interval(arg.value) if name == "theta" else alpha_interval(arg.value)
        if name in _FUNCTIONS:
            return _FUNCTIONS[name](_eval_node(node.args[0]))
        raise ChecklistError(f"unknown function {name!r}")
    raise ChecklistError(f"unsupported syntax {ast.dump(node)}")


def evaluate_item(item: ChecklistItem) -> CheckResult:
    """Certify one checklist expression; strictness comes from intervals."""
    try:
        tree = ast.parse(item.expression, mode="eval")
    except SyntaxError as exc:
        raise ChecklistError(f"cannot parse {item.expression!r}: {exc}") from exc
    node = tree.body
    if not isinstance(node, ast.Compare):
        raise ChecklistError(f"expression must be a comparison: {item.expression!r}")
    operands = [_eval_node(n) for n in [node.left, *node.comparators]]
    parts: list[CheckResult] = []
    for i, (op, lhs, rhs) in enumerate(zip(node.ops, operands, operands[1:])):
        part_id = f"{item.item_id}/{i}" if len(node.ops) > 1 else item.item_id
        if isinstance(op, ast.Lt):
            parts.append(certified_less(part_id, item.anchor, lhs, rhs))
        elif isinstance(op, ast.Gt):
            parts.append(certified_less(part_id, item.anchor, rhs, lhs))
        elif isinstance(op, ast.Eq):
            parts.append(certified_equal(part_id, item.anchor, lhs, rhs, tol=EQUALITY_TOL))
        else:
            raise ChecklistError(f"unsupported comparison in {item.expression!r}")
    if len(parts) == 1:
        return parts[0]
    return merge_results(item.item_id, item.anchor, *parts)


def load_checklist(text: str, id_prefix: str = "checklist") -> list[ChecklistItem]:
    """Parse checklist text: one expression per line, '#' starts a comment;
    a trailing comment on an expression line becomes the item's anchor."""
    items: list[ChecklistItem] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        expr, _, comment = line.partition("#")
        expr = expr.strip()
        anchor = comment.strip() or expr
        items.append(ChecklistItem(f"{id_prefix}/{len(items):02d}", anchor, expr))
    return items


BUILTIN_CORPUS = """
# Scalar inequalities consumed by the two contradiction arguments.
-df(4/(9*pi)) == (sqrt(2)/2) * (9*pi/4 - 1)               # Prop 2.2 proof: |f'(4/(9pi))| = (sqrt2/2)(9pi/4 - 1)
(sqrt(2)/2) * (9*pi/4 - 1) > pi                           # Prop 2.2 proof: |f'(4/(9pi))| > pi
1/alpha(1) - 1/alpha(2) < 0.1                             # Prop 2.2 proof: 1/alpha_1 - 1/alpha_2 < 0.1
-df(2/(3*pi)) == 1                                        # Prop 2.2 proof: |f'(2/(3pi))| = 1
-df(1/(3*pi/2 + 1/3)) < 9*pi/10                           # Prop 2.2 proof: |f'(1/(3pi/2 + 1/3))| < 9pi/10
-df(1/(2*pi + pi/3)) == 7*pi/6 - sqrt(3)/2                # Prop 2.2 proof: |f'(1/(2pi + pi/3))| = 7pi/6 - sqrt3/2
7*pi/6 - sqrt(3)/2 < 9*pi/10                              # Prop 2.2 proof: 7pi/6 - sqrt3/2 < 9pi/10
1/(3*pi/2 + 1/3) + (sqrt(3)/2)/(2*pi + pi/3) < 1/pi       # Prop 2.2 proof: |f(y0) - f(x0)| cap < 1/pi
(1 + theta(1))**2 < 6/pi                                  # Prop 2.4 proof: (1 + theta_1)^2 < 6/pi
df(4/(5*pi)) == (sqrt(2)/2) * (5*pi/4 - 1)                # Prop 2.4 proof: f'(4/(5pi)) = (sqrt2/2)(5pi/4 - 1)
df(4/(5*pi)) > pi/2                                       # Prop 2.4 proof: f'(4/(5pi)) > pi/2
df(13/(8*pi)) > pi/2                                      # Prop 2.4 proof: f'(13/(8pi)) > pi/2
f(13/(8*pi)) - f(4/(5*pi)) < 2.1/pi                       # Prop 2.4 proof: f(13/(8pi)) - f(4/(5pi)) < 2.1/pi
f(13/(8*pi)) - f(4/(5*pi)) < 2.6*(13/(8*pi) - 4/(5*pi))   # Prop 2.4 proof: image gap < 2.6 * spacing
df(7/(4*pi)) > 1.3                                        # Prop 2.4 proof: f'(7/(4pi)) > 1.3
f(7/(4*pi)) - f(4/(5*pi)) < 2.28/pi                       # Prop 2.4 proof: f(7/(4pi)) - f(4/(5pi)) < 2.28/pi
df(3/pi) == sqrt(3)/2 - pi/6                              # Prop 2.4 proof: f'(3/pi) = sqrt3/2 - pi/6
sqrt(3)/2 - pi/6 < sqrt(pi/8)                             # Prop 2.4 proof: f'(3/pi) < sqrt(pi/8)
df(2.5/pi) < (1/3)*(2*pi/5)**3                            # Prop 2.4 proof: f'(2.5/pi) < (2pi/5)^3/3 via the cubic bound
(1/3)*(2*pi/5)**3 < sqrt(pi/6)                            # Prop 2.4 proof: (2pi/5)^3/3 < sqrt(pi/6)
(2.5/pi)*sin(2*pi/5) + sin(theta(1)) < 1                  # Prop 2.4 proof: (2.5/pi) sin(2pi/5) + sin(theta_1) < 1
df(2/pi) == 1                                             # Prop 2.4 proof: f'(2/pi) = 1
0 < df(0.7/pi) < 1                                        # Prop 2.4 proof: 0 < f'(0.7/pi) < 1
df(1.9/pi) < 1 + (0.1/pi)*(pi/1.9)**3 < 1.16              # Prop 2.4 proof: f'(1.9/pi) < 1 + (0.1/pi)(pi/1.9)^3 < 1.16
pi/2.7 > 1.16                                             # Prop 2.4 proof: pi/2.7 > 1.16
pi/2.6 > 1.2                                              # Prop 2.4 proof: pi/2.6 > 1.2
"""


def builtin_checklist() -> list[ChecklistItem]:
    return load_checklist(BUILTIN_CORPUS, id_prefix="prop-ineq")


def check_proposition_inequalities(items: list[ChecklistItem] | None = None) -> list[CheckResult]:
    """Certify the whole checklist (built-in corpus by default)."""
    if items is None:
        items = builtin_checklist()
    return [evaluate_item(item) for item in items]
