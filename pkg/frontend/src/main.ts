import { mount } from "./app.js";

declare global {
  interface Window {
    CONEXSYS_BASE_URL?: string;
  }
}

const base =
  window.CONEXSYS_BASE_URL ??
  localStorage.getItem("conexsys.baseUrl") ??
  "http://127.0.0.1:8000";

const root = document.getElementById("app");
if (!root) throw new Error("missing #app mount point");
mount(root, base, window.sessionStorage);
