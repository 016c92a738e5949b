import { initApp } from "./app.js";

const app = initApp(document);
void app.init();
