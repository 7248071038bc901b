import { readFileSync } from "node:fs";

import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { ApiError, Client, ERROR_MESSAGES, describeError } from "../src/api.js";
import { initApp, stripExtension } from "../src/app.js";
import { BAND_BADGES } from "../src/badges.js";

function loadPage(): void {
  // import.meta.url is not a file: URL inside the DOM test environment
  const raw = readFileSync("public/index.html", "utf-8");
  const body = raw.slice(raw.indexOf("<body>") + "<body>".length, raw.indexOf("</body>"));
  document.body.innerHTML = body.replace(/<script[\s\S]*?<\/script>/g, "");
}

function jsonResponse(status: number, body: unknown): Response {
  return {
    ok: status >= 200 && status < 300,
    status,
    statusText: String(status),
    json: async () => body,
    text: async () => JSON.stringify(body),
  } as unknown as Response;
}

function htmlResponse(body: string): Response {
  return {
    ok: true,
    status: 200,
    statusText: "200",
    json: async () => {
      throw new Error("not json");
    },
    text: async () => body,
  } as unknown as Response;
}

const DOCS = [
  { id: 1, name: "alpha", sentence_count: 6, ingested_at: 1700000000 },
  { id: 2, name: "beta", sentence_count: 5, ingested_at: 1700000100 },
];

const REPORT = {
  doc_a: 1,
  doc_b: 2,
  pct_a: "14.3",
  pct_b: "20.0",
  band_a: "under_fifteen",
  band_b: "fifteen_to_fifty",
  matches: [{ left: { para: 0, sent: 6 }, right: { para: 0, sent: 0 } }],
  third_party: [{ side: "b", para: 0, sent: 1, docs: [3] }],
};

const REPORT_PAGE = [
  "<!DOCTYPE html><html><body>",
  '<section class="doc" id="doc-a"><p data-para="0">',
  '<span class="match">Shared line.</span> <span class="plain">Own line.</span>',
  "</p></section>",
  '<section class="doc" id="doc-b"><p data-para="0">',
  '<span class="match">Shared line.</span> <span class="thirdparty">Borrowed line.</span>',
  "</p></section>",
  '<section class="provenance"><ul><li>beta, paragraph 0, sentence 1: also found in: gamma (id 3)</li></ul></section>',
  "</body></html>",
].join("\n");

describe("unit helpers", () => {
  it("maps every error code to a distinct message", () => {
    const messages = Object.values(ERROR_MESSAGES);
    expect(new Set(messages).size).toBe(messages.length);
    for (const code of Object.keys(ERROR_MESSAGES)) {
      expect(describeError(new ApiError(code, "raw", 400))).toBe(ERROR_MESSAGES[code]);
    }
  });

  it("falls back for unknown codes and network failures", () => {
    expect(describeError(new ApiError("weird_code", "x", 500))).toContain("weird_code");
    expect(describeError(new TypeError("fetch failed"))).toBe("The server cannot be reached.");
  });

  it("has five distinct badges", () => {
    const specs = Object.values(BAND_BADGES);
    expect(specs).toHaveLength(5);
    expect(new Set(specs.map((s) => s.cssClass)).size).toBe(5);
    expect(new Set(specs.map((s) => s.label)).size).toBe(5);
  });

  it("strips only the last filename extension", () => {
    expect(stripExtension("a.txt")).toBe("a");
    expect(stripExtension("archive.tar.gz")).toBe("archive.tar");
    expect(stripExtension("noext")).toBe("noext");
    expect(stripExtension(".hidden")).toBe(".hidden");
  });
});

describe("app screens", () => {
  let fetchMock: ReturnType<typeof vi.fn>;
  let documents: { id: number; name: string; sentence_count: number; ingested_at: number }[];

  beforeEach(() => {
    loadPage();
    documents = [...DOCS];
    fetchMock = vi.fn(async (url: string, init?: RequestInit) => {
      const method = init?.method ?? "GET";
      if (url === "/api/documents" && method === "GET") {
        return jsonResponse(200, documents);
      }
      if (url.startsWith("/api/documents?name=") && method === "POST") {
        const name = decodeURIComponent(url.split("=")[1]);
        const entry = { id: 90, name, sentence_count: 4, ingested_at: 1700000200 };
        documents = documents.filter((d) => d.name !== name).concat(entry);
        return jsonResponse(201, { id: entry.id, name, sentence_count: 4 });
      }
      if (/^\/api\/documents\/\d+$/.test(url) && method === "DELETE") {
        const id = Number(url.split("/").pop());
        documents = documents.filter((d) => d.id !== id);
        return jsonResponse(204, null);
      }
      if (url === "/api/compare" && method === "POST") {
        return jsonResponse(200, REPORT);
      }
      if (/^\/api\/compare\/\d+\/\d+\/html$/.test(url)) {
        return htmlResponse(REPORT_PAGE);
      }
      throw new Error(`unrouted request: ${method} ${url}`);
    });
    vi.stubGlobal("fetch", fetchMock);
  });

  afterEach(() => {
    vi.unstubAllGlobals();
  });

  function makeApp(confirmFn: (msg: string) => boolean = () => true) {
    return initApp(document, { client: new Client(), confirmFn });
  }

  function setFile(name: string, content: string): void {
    const input = document.getElementById("upload-file") as HTMLInputElement;
    const file = new File([content], name, { type: "text/plain" });
    Object.defineProperty(input, "files", { value: [file], configurable: true });
  }

  function submit(formId: string): void {
    const form = document.getElementById(formId) as HTMLFormElement;
    form.dispatchEvent(new Event("submit", { bubbles: true, cancelable: true }));
  }

  it("renders the document table and selects on load", async () => {
    const app = makeApp();
    await app.ready;
    const rows = document.querySelectorAll("#doc-rows tr");
    expect(rows).toHaveLength(2);
    expect(rows[0].textContent).toContain("alpha");
    expect(rows[0].textContent).toContain("2023-11-14");
    const options = document.querySelectorAll("#select-a option");
    expect([...options].map((o) => o.textContent)).toEqual(["alpha", "beta"]);
    expect((document.getElementById("select-b") as HTMLSelectElement).value).toBe("2");
  });

  it("uploads a file and refreshes the table without a reload", async () => {
    const app = makeApp();
    await app.ready;
    setFile("gamma.txt", "One line. Two lines.");
    submit("upload-form");
    await vi.waitFor(() => {
      expect(document.getElementById("upload-status")!.textContent).toBe(
        "Uploaded gamma (4 sentences).",
      );
    });
    const posts = fetchMock.mock.calls.filter(([, init]) => init?.method === "POST");
    expect(posts[0][0]).toBe("/api/documents?name=gamma");
    expect(document.querySelectorAll("#doc-rows tr")).toHaveLength(3);
  });

  it("shows the mapped message when the engine rejects the upload", async () => {
    const app = makeApp();
    await app.ready;
    fetchMock.mockImplementationOnce(async () =>
      jsonResponse(400, { code: "empty_document", message: "raw server text" }),
    );
    setFile("empty.txt", "...");
    submit("upload-form");
    await vi.waitFor(() => {
      const status = document.getElementById("upload-status")!;
      expect(status.textContent).toBe(ERROR_MESSAGES.empty_document);
      expect(status.classList.contains("error")).toBe(true);
    });
  });

  it("asks before replacing a duplicate name and honours a refusal", async () => {
    const confirmFn = vi.fn(() => false);
    const app = makeApp(confirmFn);
    await app.ready;
    setFile("alpha.txt", "Replacement body.");
    submit("upload-form");
    await vi.waitFor(() => {
      expect(document.getElementById("upload-status")!.textContent).toBe("Upload cancelled.");
    });
    expect(confirmFn).toHaveBeenCalledOnce();
    expect(confirmFn.mock.calls[0][0]).toContain('"alpha"');
    expect(fetchMock.mock.calls.every(([, init]) => (init?.method ?? "GET") === "GET")).toBe(
      true,
    );
  });

  it("replaces a duplicate when confirmed", async () => {
    const app = makeApp(() => true);
    await app.ready;
    setFile("alpha.txt", "Replacement body.");
    submit("upload-form");
    await vi.waitFor(() => {
      expect(document.getElementById("upload-status")!.textContent).toContain("Uploaded alpha");
    });
    expect(document.querySelectorAll("#doc-rows tr")).toHaveLength(2);
  });

  it("deletes a document from its row", async () => {
    const app = makeApp();
    await app.ready;
    const button = document.querySelector("#doc-rows .action-delete") as HTMLButtonElement;
    button.click();
    await vi.waitFor(() => {
      expect(document.querySelectorAll("#doc-rows tr")).toHaveLength(1);
    });
    const dels = fetchMock.mock.calls.filter(([, init]) => init?.method === "DELETE");
    expect(dels).toHaveLength(1);
    expect(dels[0][0]).toBe("/api/documents/1");
  });

  it("links the XML action at the export endpoint", async () => {
    const app = makeApp();
    await app.ready;
    const link = document.querySelector("#doc-rows .action-xml") as HTMLAnchorElement;
    expect(link.getAttribute("href")).toBe("/api/documents/1/xml");
    expect(link.getAttribute("download")).toBe("alpha.xml");
  });

  it("switches screens from the nav", async () => {
    const app = makeApp();
    await app.ready;
    const before = fetchMock.mock.calls.length;
    (document.querySelector('nav button[data-screen="documents"]') as HTMLButtonElement).click();
    expect(document.getElementById("screen-documents")!.hidden).toBe(false);
    expect(document.getElementById("screen-upload")!.hidden).toBe(true);
    await vi.waitFor(() => {
      expect(fetchMock.mock.calls.length).toBeGreaterThan(before);
    });
  });

  it("renders the comparison summary and re-hosts the engine sections", async () => {
    const app = makeApp();
    await app.ready;
    submit("compare-form");
    await vi.waitFor(() => {
      expect(document.getElementById("compare-result")!.hidden).toBe(false);
    });
    expect(document.querySelector(".pct-a")!.textContent).toBe("14.3%");
    expect(document.querySelector(".pct-b")!.textContent).toBe("20.0%");
    const badges = document.querySelectorAll("#compare-summary .badge");
    expect(badges[0].className).toContain("badge-under-fifteen");
    expect(badges[0].textContent).toBe("under 15%");
    expect(badges[1].className).toContain("badge-fifteen-to-fifty");
    expect(document.querySelectorAll("#compare-docs #doc-a span.match")).toHaveLength(1);
    expect(document.querySelectorAll("#compare-docs #doc-b span.thirdparty")).toHaveLength(1);
    expect(document.querySelector("#compare-provenance li")!.textContent).toContain(
      "gamma (id 3)",
    );
  });

  it("drops a comparison response that arrives after a newer request", async () => {
    const app = makeApp();
    await app.ready;

    let releaseFirst!: () => void;
    const gate = new Promise<void>((resolve) => (releaseFirst = resolve));
    const slowReport = { ...REPORT, pct_a: "99.9", band_a: "over_fifty" };
    let compareCalls = 0;
    fetchMock.mockImplementation(async (url: string, init?: RequestInit) => {
      const method = init?.method ?? "GET";
      if (url === "/api/compare" && method === "POST") {
        compareCalls += 1;
        if (compareCalls === 1) {
          await gate;
          return jsonResponse(200, slowReport);
        }
        return jsonResponse(200, REPORT);
      }
      if (/^\/api\/compare\/\d+\/\d+\/html$/.test(url)) {
        return htmlResponse(REPORT_PAGE);
      }
      if (url === "/api/documents") return jsonResponse(200, documents);
      throw new Error(`unrouted request: ${method} ${url}`);
    });

    submit("compare-form");
    submit("compare-form");
    await vi.waitFor(() => {
      expect(document.getElementById("compare-result")!.hidden).toBe(false);
    });
    expect(document.querySelector(".pct-a")!.textContent).toBe("14.3%");

    releaseFirst();
    await new Promise((resolve) => setTimeout(resolve, 20));
    // the late first response must not overwrite the newer render
    expect(document.querySelector(".pct-a")!.textContent).toBe("14.3%");
  });
});
