"""Drive the HTTP game service as a scripted client.

Uses the in-process test client, so no server process or port is needed;
the same requests work against `evil-hangman serve` over real HTTP.
"""

import json

from fastapi.testclient import TestClient

from evilhangman.service import create_app

client = TestClient(create_app())

print("== Available lexicons ==")
for row in client.get("/lexicons").json():
    print(f"  {row['ref']:<18} n={row['n']:<3} k={row['k']} sigma={row['sigma']}")

print("\n== A game against the optimal setter ==")
game = client.post("/games", json={
    "lexicon_ref": "adversarial:m=2",
    "setter_name": "optimal",
    "max_fails": 3,
}).json()
print(f"  created session {game['id'][:8]}..., mask {game['mask']}, "
      f"{game['max_fails'] + 1} lives")

for symbol in ["a", "d", "e"]:
    resp = client.post(f"/games/{game['id']}/guess", json={"symbol": symbol})
    turn = resp.json()
    print(f"  guess {symbol}: mask {turn['mask']}  failed={turn['failed']}  "
          f"status={turn['status']}  candidates={turn['consistent_count']}")

final = client.get(f"/games/{game['id']}").json()
print(f"  final word: {final['revealed']}")
print("\n== Full final snapshot ==")
print(json.dumps(final, indent=2, sort_keys=True))
