import { ApiClient } from './api';
import { createApp } from './app';
import { Store } from './state';

const root = document.getElementById('app');
if (root) {
  const api = new ApiClient(window.location.origin);
  const store = new Store(window.localStorage);
  createApp(root, api, store);
}
