import json, time, sys
from collections import Counter
from kstardp.polygons import classify_hollow, canonical_form, polygon, canonical_key

t0 = time.time()
def prog(level, new, total):
    print(f"level {level}: +{new} classes (total {total}) {time.time()-t0:.0f}s", flush=True)

classes = classify_hollow(3, progress=prog)
ldp = [c for c in classes if c.ldp]
tri_vol = max(c.volume() for c in classes if c.n == 3)
hist = Counter(c.n for c in ldp)
out = {
    "total_hollow_classes": len(classes),
    "ldp_classes": len(ldp),
    "ldp_hist": dict(sorted(hist.items())),
    "c3_num_den": [tri_vol.numerator, tri_vol.denominator],
    "maxvol": {str(n): str(max(c.volume() for c in ldp if c.n == n)) for n in sorted(hist)},
    "seconds": round(time.time()-t0, 1),
}
print(json.dumps(out, indent=1))
with open("var/poly_k3_summary.json", "w") as fh:
    json.dump(out, fh)
# persist canonical reps of the LDP classes for the database build
with open("var/poly_k3_ldp.jsonl", "w") as fh:
    for c in sorted(ldp, key=lambda c: (c.n, c.key)):
        p = canonical_form(polygon(c.rep))
        fh.write(json.dumps([list(v) for v in p.vertices]) + "\n")
print("done", time.time()-t0, flush=True)
