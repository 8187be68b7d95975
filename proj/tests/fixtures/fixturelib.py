"""Helpers for writing replay fixtures in the layout ReplayTransport reads.

index.jsonl holds one line per recorded exchange; payload bodies live in
payloads/<key>.json, where key is the FNV-1a 64-bit hash of the canonical
request string "GET /path?k=v&k2=v2" (params sorted, not URL-encoded).
"""

import base64
import hashlib
import json
import shutil
from pathlib import Path

API = "https://api.github.com"
DATE = "Tue, 07 Apr 2020 10:00:00 GMT"


def fnv1a64(data: str) -> str:
    h = 0xCBF29CE484222325
    for b in data.encode("utf-8"):
        h ^= b
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return f"{h:016x}"


def canonical(path: str, params: dict | None = None) -> str:
    out = "GET " + path
    sep = "?"
    for k in sorted(params or {}):
        out += f"{sep}{k}={params[k]}"
        sep = "&"
    return out


def git_blob_sha(content: str) -> str:
    data = content.encode("utf-8")
    return hashlib.sha1(b"blob %d\0" % len(data) + data).hexdigest()


class Fixture:
    def __init__(self, root: Path):
        self.root = root
        self.entries: dict[str, dict] = {}
        self.payloads: dict[str, str] = {}

    def add(self, path, params=None, payload=None, status=200, headers=None):
        req = canonical(path, params)
        key = fnv1a64(req)
        if key in self.entries:
            raise ValueError(f"duplicate fixture request {req}")
        rel = f"payloads/{key}.json"
        self.entries[key] = {
            "key": key,
            "request": req,
            "status": status,
            "headers": headers or {},
            "payload": rel,
        }
        body = payload if isinstance(payload, str) else json.dumps(payload, indent=1, sort_keys=True)
        self.payloads[rel] = body
        return key

    # --- platform resources -------------------------------------------------

    def issue(self, owner, repo, number, title, body, comments=(), state="closed", pull=False, labels=()):
        """Registers the issue endpoint (and its comments) and returns the payload."""
        payload = issue_payload(owner, repo, number, title, body, len(comments), state, pull, labels)
        base = f"/repos/{owner}/{repo}/issues/{number}"
        self.add(base, payload=payload)
        if comments:
            page = [{"id": i + 1, "body": c} for i, c in enumerate(comments)]
            self.add(base + "/comments", {"per_page": "100", "page": "1"}, page)
        return payload

    def missing(self, path, params=None):
        self.add(path, params, {"message": "Not Found"}, status=404)

    def search(self, q, items, per_page=10, page=1, total=None):
        self.add(
            "/search/issues",
            {"q": q, "per_page": str(per_page), "page": str(page)},
            {"total_count": len(items) if total is None else total, "incomplete_results": False, "items": items},
        )

    def contents(self, owner, repo, path, sha, content):
        self.add(
            f"/repos/{owner}/{repo}/contents/{path}",
            {"ref": sha},
            {"type": "file", "encoding": "base64", "path": path, "content": b64(content)},
        )
        return f"{API}/repos/{owner}/{repo}/contents/{path}?ref={sha}"

    def changed_files(self, owner, repo, sha, files):
        """files: list of (path, status, new_content, diff). Returns the file entries."""
        out = []
        for path, status, content, diff in files:
            entry = {"filename": path, "status": status, "patch": diff}
            if status != "removed":
                entry["contents_url"] = self.contents(owner, repo, path, sha, content)
            out.append(entry)
        return out

    def pull_files(self, owner, repo, number, head_sha, files):
        self.add(f"/repos/{owner}/{repo}/pulls/{number}/files", {"per_page": "100"},
                 self.changed_files(owner, repo, head_sha, files))

    def commit(self, owner, repo, sha, files):
        self.add(f"/repos/{owner}/{repo}/commits/{sha}",
                 payload={"sha": sha, "files": self.changed_files(owner, repo, sha, files)})

    def repo(self, owner, repo, head_sha, files: dict[str, str], extra_tree=()):
        """HEAD commit, recursive tree and one blob per file."""
        self.add(f"/repos/{owner}/{repo}/commits/HEAD", payload={"sha": head_sha}, headers={"date": DATE})
        tree = []
        for path in extra_tree:
            tree.append({"path": path, "type": "tree", "sha": hashlib.sha1(path.encode()).hexdigest()})
        for path, content in sorted(files.items()):
            sha = git_blob_sha(content)
            tree.append({"path": path, "type": "blob", "sha": sha, "size": len(content.encode())})
            self.add(f"/repos/{owner}/{repo}/git/blobs/{sha}",
                     payload={"sha": sha, "encoding": "base64", "content": b64(content)})
        self.add(f"/repos/{owner}/{repo}/git/trees/{head_sha}", {"recursive": "1"},
                 {"sha": head_sha, "tree": tree, "truncated": False})

    def write(self):
        if self.root.exists():
            shutil.rmtree(self.root)
        (self.root / "payloads").mkdir(parents=True)
        for rel, body in self.payloads.items():
            (self.root / rel).write_text(body, encoding="utf-8")
        with open(self.root / "index.jsonl", "w", encoding="utf-8") as f:
            for key in sorted(self.entries):
                f.write(json.dumps(self.entries[key], sort_keys=True) + "\n")


def b64(text: str) -> str:
    raw = base64.b64encode(text.encode("utf-8")).decode("ascii")
    # The platform wraps base64 content at 60 columns.
    return "\n".join(raw[i:i + 60] for i in range(0, len(raw), 60)) + "\n"


def issue_payload(owner, repo, number, title, body, n_comments=0, state="closed", pull=False, labels=()):
    p = {
        "url": f"{API}/repos/{owner}/{repo}/issues/{number}",
        "repository_url": f"{API}/repos/{owner}/{repo}",
        "html_url": f"https://github.com/{owner}/{repo}/{'pull' if pull else 'issues'}/{number}",
        "number": number,
        "title": title,
        "body": body,
        "state": state,
        "comments": n_comments,
        "labels": [{"name": l} for l in labels],
    }
    if pull:
        p["pull_request"] = {"url": f"{API}/repos/{owner}/{repo}/pulls/{number}"}
    return p
