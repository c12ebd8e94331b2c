"""
Oracle Comparator
Compares the collector against the Magnus embedding on pairs of words.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple

import pandas as pd

from algebra.collector import NilpotentContext, collect, mul
from algebra.magnus import magnus_embed
from algebra.rings import INTEGERS
from algebra.words import Word, concat, render


@dataclass
class ComparisonResult:
    """Result of an oracle comparison"""
    match: bool
    message: str
    summary: Dict[str, Any] = field(default_factory=dict)
    mismatches: pd.DataFrame = field(default_factory=pd.DataFrame)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization"""
        return {
            'match': self.match,
            'message': self.message,
            'summary': self.summary,
            'mismatches': self.mismatches.head(20).to_dict('records'),
        }


class OracleComparator:
    """Dual-oracle comparison of normal forms and Magnus images"""

    def compare_words(self, pairs: Sequence[Tuple[Word, Word]], ctx: NilpotentContext) -> ComparisonResult:
        """
        For each pair (u, v), collect(u) == collect(v) must hold exactly when
        magnus_embed(u) == magnus_embed(v) at degree c over the integers.

        Args:
            pairs: Word pairs with generators in 1..q
            ctx: Nilpotent context

        Returns:
            ComparisonResult counting agreements and listing disagreements
        """
        records: List[Dict[str, Any]] = []
        equal_pairs = 0
        for u, v in pairs:
            collected_equal = collect(ctx, u) == collect(ctx, v)
            embedded_equal = magnus_embed(u, ctx.q, ctx.c, INTEGERS) == magnus_embed(v, ctx.q, ctx.c, INTEGERS)
            equal_pairs += int(collected_equal)
            if collected_equal != embedded_equal:
                records.append({
                    'u': render(u),
                    'v': render(v),
                    'collector_equal': collected_equal,
                    'magnus_equal': embedded_equal,
                })
        return self._result(records, len(pairs), equal_pairs, ctx)

    def compare_homomorphism(self, pairs: Sequence[Tuple[Word, Word]], ctx: NilpotentContext) -> ComparisonResult:
        """collect(uv) == mul(collect(u), collect(v)) for each pair"""
        records: List[Dict[str, Any]] = []
        for u, v in pairs:
            direct = collect(ctx, concat(u, v))
            combined = mul(collect(ctx, u), collect(ctx, v))
            if direct != combined:
                records.append({
                    'u': render(u),
                    'v': render(v),
                    'collected': str(direct),
                    'multiplied': str(combined),
                })
        return self._result(records, len(pairs), None, ctx)

    def _result(self, records, total, equal_pairs, ctx) -> ComparisonResult:
        match = not records
        if match:
            message = f"All {total} pairs agree in q={ctx.q}, c={ctx.c}"
        else:
            message = f"{len(records)} of {total} pairs disagree in q={ctx.q}, c={ctx.c}"
        summary = {'pairs_compared': total, 'disagreements': len(records)}
        if equal_pairs is not None:
            summary['equal_pairs'] = equal_pairs
        return ComparisonResult(match=match, message=message, summary=summary, mismatches=pd.DataFrame(records))
